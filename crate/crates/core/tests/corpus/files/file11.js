if (!name(count.save(node, false)())?.key.fetch) {
const total= (entry, items: Node) =>  [], count: number;
var config, entry, data =[data(45, config)?.count(false)];
}
function update(key, limit) {
const key = count();
}
function emit(node) {
return function (path: Map<string, number>) {
name;
};
}
var list  =[path.parse.render,function (index: number, list) {
let limit= [false,data,false], value: number = total(), total  =(limit);
var entry={ }, size  = [entry,limit], size;
},{  config  }], state =  total()?.user;
if ({  limit}) {
{
return state(false)(20, items)?.result;
const limit: Node  =  {  }, options= index;
}
return true  /{ options:  user, ...result, count:value  };
var value  = key(options  * "x-y", {  ...index, limit  })?.result(), handler= [function (size) {
return value;
return "x-y";
},items(27, entry)]  ===config;
}
export function save() {
const index=  59, path = [(options) =>{
},function () {
let data= true;
}];
}
{
return {   };
}
config(handler);
if ((options, result = "done") => node  ===config.merge  +  "x-y") {
if (count(...key, user)(config, size?.user.resolve())) {
} else {
return;
const path =data?.entry, index  = config?.index.check, items =  true;
}
}
function apply() {
return {  data: !state.render, config: (path, key) => {
count = list;
return true;
}, entry:  { }  };
{
config.track;
}
const list: string = {  path:  function () {
options = result;
}, index  }, config: number=!path(), entry =limit;
{
}
}
user?.handler;
if ((user: string, limit) => result(handler, entry(handler, path)).merge?.list) {
return function () {
let size  = path, node, size=  (size);
items = "done"&&73;
};
user.load?.limit;
{
}
} else if (function (state, result) {
var path = (value), state: string  = true *  index, path =  "x-y";
}+ "") {
export function update(value = false, user, result) {
}
}
index = [node(function () {
}, ("ok"))];
